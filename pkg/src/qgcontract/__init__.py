"""
qgcontract: exact symbolic workbench for standard and Jordanian quantum groups.
"""

from .cli import console_entry_point

__all__ = ["console_entry_point"]
