"""Polychromatic colorings of point tuples for geometric range spaces."""
