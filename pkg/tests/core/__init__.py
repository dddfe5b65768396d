"""Unit tests for the functional core - pure numerics, seeded, no I/O."""
