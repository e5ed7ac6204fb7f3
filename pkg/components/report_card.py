#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
レポートカードコンポーネントモジュール

このモジュールは、実行レポートを端末に表示するためのカードコンポーネントを提供します。
テキスト表示と JSON 表示、一覧用の一行表示に使用されます。

バージョン: 1.0.0
"""

import json

# 結果の値の最大表示文字数
MAX_VALUE_WIDTH = 100

STATUS_MARKS = {"pass": "[PASS]", "fail": "[FAIL]", "unknown": "[ ?? ]", "error": "[ERR ]"}


class ReportCard:
    """
    実行レポートを表示するカードコンポーネント。
    """

    def __init__(self, report):
        """
        ReportCardクラスのコンストラクタ。

        Args:
            report (RunReport): 表示する実行レポート
        """
        self.report = report

    def render_json(self):
        """
        機械可読な JSON 文字列を返します。
        """
        return json.dumps(self.report.to_dict(), ensure_ascii=False, indent=2, default=str)

    def render_line(self):
        """
        一覧表示用の一行を返します。
        """
        data = self.report.to_dict()
        date_str = self.report.created_at.strftime("%Y-%m-%d %H:%M")
        command = " ".join(self.report.command) or "(なし)"
        summary = data["summary"]
        return (
            f"{data['id'][:8]}  {date_str}  {STATUS_MARKS[data['status']]}  "
            f"{summary['pass']}/{summary['fail']}/{summary['unknown']}  {command}"
        )

    def _result_lines(self, value, indent=2):
        lines = []
        pad = " " * indent
        if isinstance(value, dict):
            for key, item in value.items():
                if isinstance(item, (dict, list)) and item:
                    lines.append(f"{pad}{key}:")
                    lines.extend(self._result_lines(item, indent + 2))
                else:
                    lines.append(f"{pad}{key}: {self._short(item)}")
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, dict):
                    lines.append(f"{pad}-")
                    lines.extend(self._result_lines(item, indent + 2))
                else:
                    lines.append(f"{pad}- {self._short(item)}")
        else:
            lines.append(f"{pad}{self._short(value)}")
        return lines

    def _short(self, value):
        text = str(value)
        return text[:MAX_VALUE_WIDTH] + ("..." if len(text) > MAX_VALUE_WIDTH else "")

    def render_text(self):
        """
        人が読むためのテキストを返します。

        Returns:
            str: コマンド、結果、チェック一覧、合計を含む複数行の文字列
        """
        data = self.report.to_dict()
        lines = [f"$ curvetwist {' '.join(self.report.command)}"]
        if data["error"]:
            lines.append(f"エラー: {data['error']}")
        if data["result"]:
            lines.append("結果:")
            lines.extend(self._result_lines(data["result"]))
        if data["checks"]:
            lines.append("チェック:")
            for check in data["checks"]:
                detail = f"  {check['detail']}" if check["detail"] else ""
                lines.append(f"  {STATUS_MARKS[check['status']]} {check['name']} ({check['seconds']:.3f}s){detail}")
        summary = data["summary"]
        lines.append(
            f"合計: pass {summary['pass']}, fail {summary['fail']}, unknown {summary['unknown']}"
            f"（{data['timings']['total_seconds']:.3f}s、規約 {data['conventions_fingerprint']}）"
        )
        return "\n".join(lines)
