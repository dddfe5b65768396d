"""Tests for the imperative shell: config layering and report files."""
