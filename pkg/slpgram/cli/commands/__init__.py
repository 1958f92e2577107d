"""Commands of the slpgram CLI."""
