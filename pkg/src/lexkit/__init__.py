"""Lexical resource toolkit.

Flat feature structures (:mod:`lexkit.features`), a data category registry
(:mod:`lexkit.registry`), a positional tag codec (:mod:`lexkit.msd`), the LMF
core model (:mod:`lexkit.lmf`), XML dialect readers and writers
(:mod:`lexkit.dialects`) and conversions between them (:mod:`lexkit.convert`).
"""

__version__ = "0.1.0"
