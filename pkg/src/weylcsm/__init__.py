"""Equivariant CSM/SSM/stable-basis structure constants for flag varieties."""
