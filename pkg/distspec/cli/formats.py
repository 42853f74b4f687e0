"""
Report rendering: JSON, CSV and jinja2 text templates.
"""
import csv
import io
import json
from pathlib import Path
from typing import Optional, Union

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from pydantic import BaseModel

from distspec.models.report import ExtremalReport, RhoReport

TEMPLATE_DIR = Path(__file__).parent / "templates"
CSV_HEADER = ("canonical_graph6", "family_label", "rho", "residual")
EXTENSIONS = {"json": "json", "csv": "csv", "text": "txt"}

_environment = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    undefined=StrictUndefined,
    trim_blocks=True,
    lstrip_blocks=True,
    keep_trailing_newline=True,
)

Report = Union[ExtremalReport, RhoReport]


def render_json(model: BaseModel) -> str:
    return json.dumps(model.model_dump(mode="json"), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    if isinstance(report, RhoReport):
        writer.writerow((report.graph6, "", f"{report.rho:.12f}", f"{report.residual:.3e}"))
    else:
        for entry in report.ranking:
            writer.writerow((entry.graph6, entry.label or "", f"{entry.rho:.12f}", f"{entry.residual:.3e}"))
    return buffer.getvalue()


def render_text(report: Report, label: Optional[str] = None) -> str:
    if isinstance(report, RhoReport):
        return _environment.get_template("rho.txt.j2").render(report=report, label=label)
    return _environment.get_template("report.txt.j2").render(report=report)


def render(report: Report, output_format: str, label: Optional[str] = None) -> str:
    if output_format == "json":
        return render_json(report)
    if output_format == "csv":
        return render_csv(report)
    return render_text(report, label)


def write_report(report: Report, output_format: str, output_dir: Union[str, Path], stem: str) -> Path:
    """Write the rendered report to <output_dir>/<stem>.<ext> and return the path."""
    directory = Path(output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{stem}.{EXTENSIONS[output_format]}"
    path.write_text(render(report, output_format), encoding="utf-8")
    return path
