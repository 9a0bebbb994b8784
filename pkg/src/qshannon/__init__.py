"""Design calculations for coherent-state quantum communication."""

__version__ = "0.1.0"
