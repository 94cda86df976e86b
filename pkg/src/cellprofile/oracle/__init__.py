"""Independent ground truth: explicit truncations and two orbit-counting methods."""
