"""permanent-lab command-line application package."""
