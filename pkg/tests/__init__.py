"""Test configuration."""
