"""Exact character tables of finite Coxeter groups."""

from .core import (
    CharacterTable,
    ClassFunction,
    class_fusion,
    induce,
    inner_product,
    restrict,
)
from .dihedral import char_table_dihedral
from .dispatch import character_table, product_table
from .generic import char_table_generic
from .hyperoctahedral import char_table_demihyperoctahedral, char_table_hyperoctahedral
from .symmetric import char_table_symmetric

__all__ = [
    "CharacterTable",
    "ClassFunction",
    "character_table",
    "product_table",
    "char_table_symmetric",
    "char_table_hyperoctahedral",
    "char_table_demihyperoctahedral",
    "char_table_dihedral",
    "char_table_generic",
    "class_fusion",
    "restrict",
    "induce",
    "inner_product",
]
