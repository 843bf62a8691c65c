"""Weak coloring orders and uniform quasi-wideness on sparse graphs."""
