"""Exact screening of Yetter-Drinfeld modules over SL(2, F_q) and GL(2, F_q).

The engine builds the groups over exact finite fields, computes conjugacy
classes and abelian centralizers, evaluates diagonal braidings on commuting
subsets of each class, and applies rank-two, power, triangle and long-cycle
rules to decide which (class, character) pairs survive screening.
"""
from .chars import Character, RootOfUnity, abelian_structure, enumerate_characters
from .classify import Report, compare_to_paper, generation_check_A, screen_group
from .ff import FieldSpec, FqElem, QuadraticExtension
from .grp2 import GL2, SL2, GroupSpec, conjugacy_classes

__version__ = "0.1.0"

__all__ = [
    "Character", "RootOfUnity", "abelian_structure", "enumerate_characters",
    "Report", "compare_to_paper", "generation_check_A", "screen_group",
    "FieldSpec", "FqElem", "QuadraticExtension",
    "GL2", "SL2", "GroupSpec", "conjugacy_classes",
]
