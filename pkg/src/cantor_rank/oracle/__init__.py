"""Independent recomputation, sampling and the acceptance battery."""
