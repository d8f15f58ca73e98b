"""Spanier-Whitehead duality shifts by exact computation."""
