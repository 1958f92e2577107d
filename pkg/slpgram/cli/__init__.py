"""Command-line interface for slpgram."""
