"""render sub-package — DOT Hasse diagrams and pandas tables."""
