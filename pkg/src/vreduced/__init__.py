"""Divisor theory on vertex-weighted multigraphs in exact arithmetic."""
