"""Tests for standard-subspace-verifier."""
