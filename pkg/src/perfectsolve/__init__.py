"""Perfect Solve - exact stable sets and colorings for Berge trigraphs without balanced skew-partitions."""

__version__ = "0.1.0"
