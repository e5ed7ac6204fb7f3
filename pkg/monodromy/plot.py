#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
追跡軌跡の出力モジュール

各ループで追跡した根の実部の推移を CSV と PNG 画像に書き出します。

バージョン: 1.0.0
"""

import logging
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

logger = logging.getLogger(__name__)

CSV_HEADER = "loop,step,x_re,x_im,strand,y_re,y_im"


def trace_rows(loops):
    """
    軌跡を (ループ, ステップ, Re x, Im x, ストランド, Re y, Im y) の行に展開します。

    Returns:
        numpy.ndarray: 行の配列
    """
    rows = []
    for loop in loops:
        for step, (x, ys) in enumerate(loop.trace):
            for strand, y in enumerate(ys):
                rows.append((loop.index, step, x.real, x.imag, strand, y.real, y.imag))
    return np.array(rows, dtype=float).reshape(-1, 7)


def write_trace_csv(loops, path):
    """
    軌跡を CSV ファイルに書き出します。

    Args:
        loops (list): record_trace=True で追跡した TrackedLoop のリスト
        path (str | Path): 出力先

    Returns:
        Path: 書き出したファイル
    """
    path = Path(path)
    rows = trace_rows(loops)
    np.savetxt(path, rows, delimiter=",", header=CSV_HEADER, comments="",
               fmt=["%d", "%d", "%.12g", "%.12g", "%d", "%.12g", "%.12g"])
    logger.info(f"軌跡を書き出しました: {path}（{len(rows)} 行）")
    return path


def plot_traces(loops, path):
    """
    ループごとにストランドの Re y をステップに対して描いた PNG を保存します。
    """
    path = Path(path)
    count = max(len(loops), 1)
    fig, axes = plt.subplots(count, 1, figsize=(8, 2.2 * count), squeeze=False)
    for ax, loop in zip(axes[:, 0], loops):
        if not loop.trace:
            continue
        values = np.array([[y.real for y in ys] for _, ys in loop.trace])
        for strand in range(values.shape[1]):
            ax.plot(values[:, strand], linewidth=1.0, label=f"strand {strand}")
        ax.set_title(f"loop {loop.index}: {loop.braid.to_string()}", fontsize=9)
        ax.set_ylabel("Re y")
    axes[-1, 0].set_xlabel("step")
    fig.tight_layout()
    fig.savefig(path, dpi=100)
    plt.close(fig)
    logger.info(f"軌跡の図を保存しました: {path}")
    return path
