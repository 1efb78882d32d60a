from __future__ import annotations

import logging
from typing import Dict, Mapping

import pandas as pd
from openpyxl.styles import Alignment, Font, PatternFill

from app.models.metrics import Metrics

logger = logging.getLogger(__name__)

SYSTEM_ORDER = ("BL", "EE_verb", "EE")
METRIC_COLUMNS = (("Precision", "precision"), ("Recall", "recall"), ("F1", "f1"))
AVERAGE_ROW = "Average"


def build_report(systems: Mapping[str, Mapping[str, Metrics]]) -> pd.DataFrame:
    """Scenario x (metric, system) table in percent, plus a macro-averaged row.

    `systems` maps a system name (BL, EE_verb, EE) to its per-scenario metrics.
    """
    names = [s for s in SYSTEM_ORDER if s in systems] + [s for s in systems if s not in SYSTEM_ORDER]
    scenarios: Dict[str, None] = {}
    for name in names:
        scenarios.update(dict.fromkeys(systems[name]))

    columns = pd.MultiIndex.from_tuples(
        [(label, name) for label, _ in METRIC_COLUMNS for name in names], names=["metric", "system"]
    )
    rows = []
    for scenario in scenarios:
        row = []
        for _, attr in METRIC_COLUMNS:
            for name in names:
                metrics = systems[name].get(scenario)
                row.append(100.0 * getattr(metrics, attr) if metrics is not None else float("nan"))
        rows.append(row)

    df = pd.DataFrame(rows, index=pd.Index(list(scenarios), name="Scenario"), columns=columns)
    df.loc[AVERAGE_ROW] = df.mean(axis=0, skipna=True)
    df.index.name = "Scenario"
    return df


def render_report(df: pd.DataFrame) -> str:
    return df.to_string(float_format=lambda v: f"{v:.1f}")


def write_report_xlsx(df: pd.DataFrame, output_path: str) -> None:
    """Excel export; flattened column names, styled header, bold average row."""
    flat = df.copy()
    flat.columns = [f"{metric} {system}" for metric, system in df.columns]
    flat = flat.round(1).reset_index()

    with pd.ExcelWriter(output_path, engine="openpyxl") as writer:
        flat.to_excel(writer, sheet_name="Results", index=False)
        worksheet = writer.sheets["Results"]

        header_font = Font(bold=True, color="FFFFFF")
        header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
        for cell in worksheet[1]:
            cell.font = header_font
            cell.fill = header_fill
            cell.alignment = Alignment(horizontal="center")

        for cell in worksheet[worksheet.max_row]:
            cell.font = Font(bold=True)

        for column in worksheet.columns:
            cells = list(column)
            width = max(len(str(c.value)) for c in cells if c.value is not None)
            worksheet.column_dimensions[cells[0].column_letter].width = min(width + 2, 30)

    logger.info(f"Report written to {output_path}")
