"""Laplacian spectra, inertia and spanning-tree counts of cographs from cotrees."""
