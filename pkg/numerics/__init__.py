"""Euler form, Coxeter transformation, dimension vectors and Hom dimensions."""
