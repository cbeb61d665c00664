"""Property checks loaded by name from a check-suite configuration."""
