"""Exact computations with the BMS-Kac-Moody algebra and its rank-one non-weight modules."""
