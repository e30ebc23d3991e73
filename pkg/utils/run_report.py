"""
Run Reports
JSON report assembly with a digest that ignores timing
"""

import hashlib
import json


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str)


def report_digest(report: dict) -> str:
    """SHA-256 over {command, params, checks, summary}"""
    body = {key: report.get(key) for key in ("command", "params", "checks", "summary")}
    return hashlib.sha256(canonical_json(body).encode("utf-8")).hexdigest()


def build_report(command: str, params: dict, checks: list, summary: dict, elapsed: float) -> dict:
    report = {
        "command": command,
        "params": params,
        "checks": checks,
        "summary": summary,
    }
    report["digest"] = report_digest(report)
    report["elapsed"] = round(elapsed, 3)
    return report


def dump_report(report: dict) -> str:
    """Pretty JSON in insertion order"""
    return json.dumps(report, indent=2, default=str)
