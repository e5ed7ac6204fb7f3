#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
規約台帳モジュール

計算結果の向きや符号を決める較正済みの規約を一か所に固定し、
そのフィンガープリントを提供します。すべての RunReport にこの
フィンガープリントが記録されます。

バージョン: 1.0.0
"""

import hashlib
import json
from types import MappingProxyType

CONVENTIONS = MappingProxyType({
    "composition_order": "left-to-right",
    "hurwitz_forward": "(t_k, t_k+1) -> (t_k t_k+1 t_k^-1, t_k)",
    "artin_action": "s_i: g_i -> g_i g_i+1 g_i^-1, g_i+1 -> g_i (right action)",
    "bezout_pairing": "B = b12 (x) D0 + b2 (x) D1 - b1 (x) D2",
    "bracket_orientation": {
        "b1": "x1*y0 - x0*y1",
        "b2": "x2*y0 - x0*y2",
        "b12": "x1*y2 - x2*y1",
    },
    "gen_bezout_free_variables": "zero",
    "pencil_slot_order": ["y", "x", "1"],
    "multiplicity_index": "first 1-based index where D_i(0) != E_i(0), capped at 4",
    "two_lines_shear": "x1 -> x1 + k*x2, k = 0, 1, -1, 2, -2, ...",
    "monodromy_shear_hint": "x -> x + k*y, k = 1, -1, 2, -2, ...",
    "crossing_sign": "+ when Im(right - left) > 0 at the swap",
    "strand_order": "(Re y, Im y) ascending",
    "loop_order": "decreasing Re, then decreasing Im; corridor below all disks",
    "loop_orientation": "counterclockwise",
    "base_point": "M = max Re + 1 + max radius, fiber read at M - i*0.05*loop_radius",
    "normalization": "divide by grlex leading coefficient",
})


def conventions_dict():
    """
    規約台帳を JSON 化可能な辞書として返します。

    Returns:
        dict: 規約名から値への辞書
    """
    return json.loads(json.dumps(dict(CONVENTIONS)))


def fingerprint():
    """
    規約台帳のフィンガープリント（正準 JSON の sha256 先頭 12 桁）を返します。
    """
    canonical = json.dumps(conventions_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()[:12]
