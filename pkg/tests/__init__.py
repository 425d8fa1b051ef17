"""Tests package for the quantum Lie algebra toolkit."""
