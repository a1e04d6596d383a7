"""Term language, renderer and command line."""
