"""Start module dimension data, graded quiver and duality checks."""
