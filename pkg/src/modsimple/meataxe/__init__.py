"""Composition factors and simple modules of permutation groups over finite fields."""
