"""State spaces of hybrid Landau-Ginzburg models and mirror maps between them."""

__version__ = "0.1.0"
