"""Command-line front end (``paracyclic`` console script)."""
