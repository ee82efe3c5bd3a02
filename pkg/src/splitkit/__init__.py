"""Reasoning in assumption-based argumentation and SETAFs, with splitting."""

from splitkit.aba import Abaf, Rule
from splitkit.semantics import Semantics
from splitkit.setaf import Setaf

__all__ = ["Abaf", "Rule", "Semantics", "Setaf"]
