"""Command-line interface: fill, batch, gen, bench, eval.

Exit codes: 0 success, 1 I/O failure, 2 validation failure (bad flags, bad
palette, stray pixel values, dimension mismatches). Set ``SCAFF_NO_COLOR`` to
disable ANSI colors in terminal output.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .algorithms import FillAlgorithm
from .bench import ALL_CASES, fit_by_algorithm, run_bench, write_csv, write_summary_json
from .casegen import generate_case
from .errors import ValidationError
from .imageio import FillConfig, decode_image, encode_image, read_image
from .metrics import f1_score, mae
from .raster import Palette

_IMAGE_EXTENSIONS = (".png", ".pgm")


def _color_enabled() -> bool:
    return "SCAFF_NO_COLOR" not in os.environ and sys.stderr.isatty()


def _err(message: str) -> None:
    prefix = "\x1b[31merror:\x1b[0m" if _color_enabled() else "error:"
    print(f"{prefix} {message}", file=sys.stderr)


def _add_palette_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("palette")
    group.add_argument("--background", type=int, default=0, help="background pixel value (default 0)")
    group.add_argument("--boundary", type=int, default=255, help="boundary pixel value (default 255)")
    group.add_argument("--exterior-label", type=int, default=80,
                       help="temporary exterior label value (default 80)")
    group.add_argument("--interior-label", type=int, default=128,
                       help="temporary interior label value (default 128)")
    group.add_argument("--mask", type=int, default=255,
                       help="output mask value (default 255, same as boundary)")


def _palette_from(ns: argparse.Namespace) -> Palette:
    return Palette(
        background=ns.background,
        boundary=ns.boundary,
        exterior_label=ns.exterior_label,
        interior_label=ns.interior_label,
        mask=ns.mask,
    )


def _parse_algorithm(name: str) -> FillAlgorithm:
    try:
        return FillAlgorithm(name)
    except ValueError:
        raise ValidationError(
            f"unknown algorithm {name!r}; choose from "
            + ", ".join(a.value for a in FillAlgorithm)
        ) from None


def _parse_int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise ValidationError(f"{flag} expects a comma-separated integer list, got {text!r}") from None


def _list_images(directory: str) -> list[str]:
    names = sorted(
        name for name in os.listdir(directory)
        if os.path.splitext(name)[1].lower() in _IMAGE_EXTENSIONS
    )
    return names


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scaff",
        description="Fill boundary-only raster images into masks; generate, benchmark and score them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_fill = sub.add_parser("fill", help="fill one boundary image into a mask")
    p_fill.add_argument("--algorithm", required=True, help="efci or scaff")
    p_fill.add_argument("--input", required=True, help="input image (.png or .pgm)")
    p_fill.add_argument("--output", required=True, help="output image path")
    p_fill.add_argument("--threshold", type=int, default=None,
                        help="binarize: values >= T become boundary (omits strict value check)")
    _add_palette_flags(p_fill)

    p_batch = sub.add_parser("batch", help="fill every image in a directory")
    p_batch.add_argument("--algorithm", required=True, help="efci or scaff")
    p_batch.add_argument("--input-dir", required=True)
    p_batch.add_argument("--output-dir", required=True)
    p_batch.add_argument("--jobs", type=int, default=1, help="parallel workers (default 1)")
    p_batch.add_argument("--threshold", type=int, default=None,
                         help="binarize: values >= T become boundary")
    _add_palette_flags(p_batch)

    p_gen = sub.add_parser("gen", help="generate test scenarios with exact ground truth")
    p_gen.add_argument("--case", required=True, help="case id 1..8, or 'all'")
    p_gen.add_argument("--size", type=int, default=200, help="edge length in pixels (default 200)")
    p_gen.add_argument("--thickness", type=int, default=1, help="boundary thickness (default 1)")
    p_gen.add_argument("--rng-seed", type=int, default=0, help="generator seed (default 0)")
    p_gen.add_argument("--out", required=True, help="output directory")

    p_bench = sub.add_parser("bench", help="time the algorithms and fit time vs pixel count")
    p_bench.add_argument("--sizes", required=True, help="comma-separated edge lengths, e.g. 200,400")
    p_bench.add_argument("--cases", default="all", help="comma-separated case ids, or 'all' (default)")
    p_bench.add_argument("--repeats", type=int, default=3, help="timed repetitions per image (default 3)")
    p_bench.add_argument("--algorithms", default="efci,scaff",
                         help="comma-separated algorithms (default efci,scaff)")
    p_bench.add_argument("--csv", default=None, help="write raw timing records to this CSV")
    p_bench.add_argument("--json", default=None, help="write per-algorithm fit summary to this JSON")

    p_eval = sub.add_parser(
        "eval",
        help="score predicted masks against ground truth",
        description="Per-image F1 and MAE for files with matching names in both "
                    "directories, plus a final row with the per-image means.",
    )
    p_eval.add_argument("--pred-dir", required=True)
    p_eval.add_argument("--gt-dir", required=True)
    p_eval.add_argument("--positive", type=int, default=255,
                        help="pixel value counted as positive (default 255)")
    p_eval.add_argument("--csv", default=None, help="write rows to this CSV instead of stdout")

    return parser


def _fill_config(ns: argparse.Namespace) -> FillConfig:
    return FillConfig(
        algorithm=_parse_algorithm(ns.algorithm),
        palette=_palette_from(ns),
        threshold=ns.threshold,
        strict=ns.threshold is None,
    )


def _cmd_fill(ns: argparse.Namespace) -> int:
    config = _fill_config(ns)
    img = decode_image(ns.input, config)
    result = config.algorithm.fill(img, config.palette)
    encode_image(result, ns.output)
    print(f"wrote {ns.output}")
    return 0


def _cmd_batch(ns: argparse.Namespace) -> int:
    config = _fill_config(ns)
    if ns.jobs < 1:
        raise ValidationError(f"--jobs must be >= 1, got {ns.jobs}")
    names = _list_images(ns.input_dir)
    if not names:
        raise ValidationError(f"no .png/.pgm files found in {ns.input_dir}")
    os.makedirs(ns.output_dir, exist_ok=True)

    def process(name: str) -> None:
        img = decode_image(os.path.join(ns.input_dir, name), config)
        result = config.algorithm.fill(img, config.palette)
        encode_image(result, os.path.join(ns.output_dir, name))

    failures: list[tuple[str, Exception]] = []
    with ThreadPoolExecutor(max_workers=ns.jobs) as pool:
        futures = [(name, pool.submit(process, name)) for name in names]
        for name, future in futures:
            exc = future.exception()
            if exc is not None:
                failures.append((name, exc))

    for name, exc in failures:
        _err(f"{name}: {exc}")
    print(f"filled {len(names) - len(failures)}/{len(names)} images into {ns.output_dir}")
    if not failures:
        return 0
    return 1 if any(isinstance(e, OSError) for _, e in failures) else 2


def _cmd_gen(ns: argparse.Namespace) -> int:
    if ns.case == "all":
        case_ids = list(ALL_CASES)
    else:
        try:
            case_ids = [int(ns.case)]
        except ValueError:
            raise ValidationError(f"--case expects 1..8 or 'all', got {ns.case!r}") from None
    os.makedirs(ns.out, exist_ok=True)
    for case_id in case_ids:
        case = generate_case(case_id, ns.size, ns.thickness, ns.rng_seed)
        encode_image(case.boundary_image, os.path.join(ns.out, f"case{case_id}_boundary.png"))
        encode_image(case.ground_truth_mask, os.path.join(ns.out, f"case{case_id}_gt.png"))
    print(f"wrote {2 * len(case_ids)} files to {ns.out}")
    return 0


def _cmd_bench(ns: argparse.Namespace) -> int:
    sizes = _parse_int_list(ns.sizes, "--sizes")
    cases = list(ALL_CASES) if ns.cases == "all" else _parse_int_list(ns.cases, "--cases")
    algorithms = [_parse_algorithm(name.strip()) for name in ns.algorithms.split(",") if name.strip()]
    records = run_bench(sizes, cases=cases, repeats=ns.repeats, algorithms=algorithms)
    if ns.csv:
        write_csv(records, ns.csv)
    fits = fit_by_algorithm(records)
    if ns.json:
        write_summary_json(fits, ns.json)
    for algorithm, fit in fits.items():
        print(
            f"{algorithm.value}: slope={fit.slope:.3e} s/pixel  "
            f"intercept={fit.intercept:.3e} s  adj_r2={fit.adj_r2:.6f}"
        )
    return 0


def _cmd_eval(ns: argparse.Namespace) -> int:
    pred_names = set(_list_images(ns.pred_dir))
    gt_names = set(_list_images(ns.gt_dir))
    common = sorted(pred_names & gt_names)
    if not common:
        raise ValidationError(
            f"no image files with matching names in {ns.pred_dir} and {ns.gt_dir}"
        )
    rows = []
    for name in common:
        pred = read_image(os.path.join(ns.pred_dir, name))
        gt = read_image(os.path.join(ns.gt_dir, name))
        rows.append((name, f1_score(pred, gt, ns.positive), mae(pred, gt)))
    mean_f1 = sum(r[1] for r in rows) / len(rows)
    mean_mae = sum(r[2] for r in rows) / len(rows)
    rows.append(("mean", mean_f1, mean_mae))

    lines = ["file,f1,mae"] + [f"{name},{f1:.9f},{err:.9f}" for name, f1, err in rows]
    if ns.csv:
        with open(ns.csv, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(f"wrote {ns.csv} (mean f1={mean_f1:.9f}, mae={mean_mae:.9f})")
    else:
        print("\n".join(lines))
    return 0


_COMMANDS = {
    "fill": _cmd_fill,
    "batch": _cmd_batch,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
    "eval": _cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage/help
        return int(exc.code or 0)
    try:
        return _COMMANDS[ns.command](ns)
    except ValidationError as exc:
        _err(str(exc))
        return 2
    except OSError as exc:
        _err(str(exc))
        return 1


if __name__ == "__main__":
    sys.exit(main())
