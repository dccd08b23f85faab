"""Core utility functions."""
