# %%
import argparse
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd
from openpyxl.styles import Alignment, Font, PatternFill

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).resolve().parents[1]))

from app.models.hyperparams import Hyperparams, SynthConfig
from app.services.evaluation.pair_eval import evaluate
from app.services.evaluation.verb_baseline import evaluate_bl, train_bl
from app.services.training.learner import train
from app.utils.synthetic import generate_synthetic

# 로깅 설정
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(levelname)s - %(message)s',
    handlers=[
        logging.FileHandler('synthetic_benchmark.log'),
        logging.StreamHandler()
    ]
)
logger = logging.getLogger(__name__)


class SyntheticBenchmark:
    """BL / EE_verb / EE 비교 - 시드별, 코퍼스 설정별 반복 실행"""

    def __init__(self, seeds: List[int], epochs: int, dims: tuple):
        self.seeds = seeds
        self.epochs = epochs
        self.dims = dims
        self.settings = {
            "plain": dict(num_event_types=10, esds_per_scenario=30, dropout=0.2, lexical_variants=2),
            "arg_determined": dict(num_event_types=10, esds_per_scenario=30, dropout=0.2,
                                   lexical_variants=1, arg_determined=True),
        }
        logger.info(f"Benchmark seeds={seeds} epochs={epochs} dims={dims}")

    def run_one(self, setting: str, seed: int) -> Dict[str, Any]:
        corpus, pairs = generate_synthetic(SynthConfig(seed=seed, **self.settings[setting]))
        record: Dict[str, Any] = {"setting": setting, "seed": seed, "pairs": len(pairs)}

        bl = evaluate_bl(pairs, train_bl(corpus, seed=seed))
        record.update({"BL_precision": bl.precision, "BL_recall": bl.recall, "BL_f1": bl.f1})

        for name, mode in (("EE_verb", "verb_only"), ("EE", "full")):
            hyper = Hyperparams(epochs=self.epochs, seed=seed, mode=mode, dims=self.dims)
            params, history = train(corpus, hyper)
            m = evaluate(pairs, params, mode)
            record.update({
                f"{name}_precision": m.precision,
                f"{name}_recall": m.recall,
                f"{name}_f1": m.f1,
                f"{name}_final_violations": history.violations[-1] if history.epochs else None,
            })
        logger.info(f"[{setting} seed={seed}] BL={record['BL_f1']:.3f} "
                    f"EE_verb={record['EE_verb_f1']:.3f} EE={record['EE_f1']:.3f}")
        return record

    def run(self) -> pd.DataFrame:
        records = [self.run_one(setting, seed) for setting in self.settings for seed in self.seeds]
        return pd.DataFrame(records)

    def create_excel_report(self, df: pd.DataFrame, output_path: str) -> None:
        """결과를 엑셀 파일로 저장 - 실행별 시트 + 요약 시트"""
        f1_columns = ["BL_f1", "EE_verb_f1", "EE_f1"]
        summary = df.groupby("setting")[f1_columns].agg(["mean", "std"]).round(4)
        summary.columns = [f"{col}_{stat}" for col, stat in summary.columns]

        with pd.ExcelWriter(output_path, engine='openpyxl') as writer:
            df.round(4).to_excel(writer, sheet_name="Runs", index=False)
            summary.reset_index().to_excel(writer, sheet_name="Summary", index=False)

            for sheet_name, color in (("Runs", "366092"), ("Summary", "C55A5A")):
                worksheet = writer.sheets[sheet_name]
                header_font = Font(bold=True, color="FFFFFF")
                header_fill = PatternFill(start_color=color, end_color=color, fill_type="solid")
                for cell in worksheet[1]:
                    cell.font = header_font
                    cell.fill = header_fill
                    cell.alignment = Alignment(horizontal="center")

        logger.info(f"✅ Excel report saved: {output_path}")


def main():
    parser = argparse.ArgumentParser(description="Synthetic script-ordering benchmark")
    parser.add_argument("--seeds", default="0,1,2,3,4,5,6,7,8,9", help="Comma-separated seeds")
    parser.add_argument("--epochs", type=int, default=200)
    parser.add_argument("--dims", default="50,50,50")
    parser.add_argument("--output", default="synthetic_benchmark.xlsx")
    args = parser.parse_args()

    seeds = [int(s) for s in args.seeds.split(",")]
    dims = tuple(int(v) for v in args.dims.split(","))
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    output_path = f"{timestamp}_{args.output}"

    bench = SyntheticBenchmark(seeds=seeds, epochs=args.epochs, dims=dims)
    df = bench.run()
    bench.create_excel_report(df, output_path)
    print(df.groupby("setting")[["BL_f1", "EE_verb_f1", "EE_f1"]].mean().round(3).to_string())


if __name__ == "__main__":
    main()
