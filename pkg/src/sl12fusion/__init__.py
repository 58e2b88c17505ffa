"""Exact module theory for the current superalgebra sl(1|2)[t]."""
