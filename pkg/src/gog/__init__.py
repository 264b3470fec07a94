"""Exact computation in growth order groups of Puiseux germs."""
