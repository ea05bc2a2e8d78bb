"""Sets of finitely supported integer sequences built from Higman-style operations."""
from .dsl import format_expr, parse_expr
from .enumeration import enumerate_set, first_stage, stage_items
from .expr import (AUX_OPS, BASES, HIGMAN_OPS, NODE_TYPES, Add01, AddC, Diag, ExprStats, Half,
                   Iota, Lit, Meet, MulC, Neg0, Pattern, Perm, Prod, Proj0, SetExpr, Shift,
                   Stride, Swap01, Union, Zero0, expr_stats, meet_all, union_all)
from .membership import DEFAULT_BUDGET, default_budget, member
from .pattern import PatternSet, make_pattern, parse_pattern, pattern_member
from .verdict import NO, UNKNOWN, YES, Budget, Verdict
from .window import Comparison, WindowResult, eq_on_window, window, window_brute, window_key

__all__ = [name for name in dir() if not name.startswith("_")]
