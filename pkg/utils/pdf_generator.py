"""
PDF Report Generator
Renders sequence tables and verification runs as a multi-page PDF
"""

import io
from datetime import datetime

import matplotlib

matplotlib.use("Agg")

import matplotlib.backends.backend_pdf as pdf_backend  # noqa: E402
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

CHECKS_PER_PAGE = 40
VERDICT_MARKS = {"pass": "PASS", "fail": "FAIL", "info": "info"}


def generate_pdf_report(report, sequences=None, report_type="verify"):
    """
    Generate PDF report for a CLI run

    Args:
        report: The JSON report dict (command, params, checks, summary)
        sequences: Optional list of CountSequence objects to plot
        report_type: 'verify' or 'sequence'

    Returns:
        bytes: PDF file content
    """
    buffer = io.BytesIO()
    pdf = pdf_backend.PdfPages(buffer)

    try:
        _cover_page(pdf, report, report_type)
        if sequences:
            _sequence_page(pdf, sequences)
        if report_type == "verify":
            _check_pages(pdf, report.get("checks", []))
        else:
            _table_pages(pdf, sequences or [])
    finally:
        pdf.close()

    buffer.seek(0)
    return buffer.getvalue()


def write_pdf_report(path, report, sequences=None, report_type="verify"):
    content = generate_pdf_report(report, sequences, report_type)
    with open(path, "wb") as handle:
        handle.write(content)
    return len(content)


def _cover_page(pdf, report, report_type):
    fig = plt.figure(figsize=(8.5, 11))
    title = "Verification Report" if report_type == "verify" else "Sequence Report"
    fig.text(0.5, 0.75, title, ha="center", va="center", fontsize=30, fontweight="bold")
    fig.text(0.5, 0.67, "Generalized pattern avoidance", ha="center", va="center",
             fontsize=16, color="gray")
    fig.text(0.5, 0.6, f"Command: {report.get('command', report_type)}",
             ha="center", va="center", fontsize=13)
    fig.text(0.5, 0.56, f'Generated: {datetime.now().strftime("%Y-%m-%d %H:%M:%S")}',
             ha="center", va="center", fontsize=11, color="gray")

    params = report.get("params", {})
    param_lines = "\n    ".join(f"{key}: {value}" for key, value in params.items())
    summary = report.get("summary")
    summary_text = ""
    if summary:
        summary_text = f"""
    Summary:
    ────────────────────────────────
    Passed: {summary.get('passed', 0)}
    Failed: {summary.get('failed', 0)}
    Info:   {summary.get('info', 0)}
    Digest: {report.get('digest', '')[:16]}"""

    metadata_text = f"""
    Parameters:
    ────────────────────────────────
    {param_lines}
    {summary_text}
    """
    fig.text(0.5, 0.3, metadata_text, ha="center", va="center", fontsize=9, family="monospace",
             bbox=dict(boxstyle="round", facecolor="wheat", alpha=0.3))

    plt.axis("off")
    pdf.savefig(fig, bbox_inches="tight")
    plt.close()


def _sequence_page(pdf, sequences):
    fig, ax = plt.subplots(figsize=(10, 6))
    for seq in sequences:
        n = np.arange(len(seq.values))
        counts = np.array([float(v) for v in seq.values])
        mask = counts > 0
        ax.plot(n[mask], counts[mask], marker="o", linewidth=2,
                label=f"{seq.label} ({seq.method})" if seq.method else seq.label)
    ax.set_yscale("log")
    ax.set_xlabel("n", fontsize=12)
    ax.set_ylabel("avoiders", fontsize=12)
    ax.set_title("Avoider counts", fontsize=14, fontweight="bold")
    ax.grid(True, alpha=0.3)
    ax.legend(loc="upper left", fontsize=8)
    plt.tight_layout()
    pdf.savefig(fig, bbox_inches="tight")
    plt.close()


def _text_page(pdf, title, lines):
    fig = plt.figure(figsize=(8.5, 11))
    fig.text(0.05, 0.96, title, ha="left", va="top", fontsize=14, fontweight="bold")
    fig.text(0.05, 0.92, "\n".join(lines), ha="left", va="top", fontsize=7, family="monospace")
    plt.axis("off")
    pdf.savefig(fig, bbox_inches="tight")
    plt.close()


def _check_pages(pdf, checks):
    lines = []
    for check in checks:
        params = ",".join(f"{k}={v}" for k, v in check["params"].items())
        line = f"{VERDICT_MARKS.get(check['verdict'], check['verdict']):4}  {check.get('suite', ''):14} {check['name']} [{params}]"
        if check["verdict"] == "fail":
            line += f"  {check['detail']}"
        lines.append(line[:160])
    pages = [lines[i:i + CHECKS_PER_PAGE] for i in range(0, len(lines), CHECKS_PER_PAGE)] or [["(no checks)"]]
    for index, page in enumerate(pages, 1):
        _text_page(pdf, f"Checks ({index}/{len(pages)})", page)


def _table_pages(pdf, sequences):
    for seq in sequences:
        rows = [f"{n:>4}  {value}" for n, value in enumerate(seq.values)]
        for start in range(0, len(rows), CHECKS_PER_PAGE):
            _text_page(pdf, f"{seq.label} ({seq.method})", ["   n  count"] + rows[start:start + CHECKS_PER_PAGE])
