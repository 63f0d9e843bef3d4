"""Bent and plateaued Boolean functions: transforms, spectral synthesis, secondary constructions."""
