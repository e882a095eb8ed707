"""Exact computational laboratory for cluster structures on disk configurations."""
