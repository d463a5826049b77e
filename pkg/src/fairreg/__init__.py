"""fairreg: a FAIR software-metadata registry with thesaurus-based search."""

__version__ = "0.1.0"
