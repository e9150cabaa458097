"""Exact verification of q-analogues of Beukers-type supercongruences."""

__version__ = "0.1.0"
