"""
hiercost - hierarchical clustering cost toolkit
"""

from src.config.constants import HIERCOST_VERSION

__version__ = HIERCOST_VERSION
