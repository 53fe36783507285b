"""Motion file I/O.

A motion file is a single CSV with header
`id,stroke_type,label,frame,j0x,j0y,j0z,...`, one row per frame, frames
for a sample contiguous and in order, label empty when unknown. A
sidecar `<file>.meta` carries the frame rate and joint names as
`key: value` lines. Floats are written with repr so a round trip is
bit-exact.
"""

from __future__ import annotations

import csv
from pathlib import Path

import numpy as np

from ..errors import IngestionError
from .types import Dataset, MotionSample, MotionSchema

FORMAT_NAME = "motionguide-motion-v1"


def _coord_columns(n_joints: int) -> list[str]:
    return [f"j{j}{axis}" for j in range(n_joints) for axis in "xyz"]


def save_motion_file(dataset: Dataset, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "stroke_type", "label", "frame"]
                        + _coord_columns(dataset.schema.n_joints))
        for sample in dataset.samples:
            label = "" if sample.label is None else str(int(sample.label))
            for t in range(sample.n_frames):
                writer.writerow([sample.sample_id, sample.stroke_type, label, t]
                                + [repr(v) for v in sample.frames[t]])
    meta = Path(str(path) + ".meta")
    with meta.open("w") as fh:
        fh.write(f"format: {FORMAT_NAME}\n")
        fh.write(f"frame_rate_hz: {repr(dataset.schema.frame_rate_hz)}\n")
        fh.write(f"joints: {','.join(dataset.schema.joint_names)}\n")
    return path


def _read_sidecar(path: Path) -> MotionSchema:
    meta = Path(str(path) + ".meta")
    if not meta.exists():
        raise IngestionError(f"missing sidecar metadata file: {meta}")
    fields = {}
    for line in meta.read_text().splitlines():
        line = line.strip()
        if not line or ":" not in line:
            continue
        key, value = line.split(":", 1)
        fields[key.strip()] = value.strip()
    if "joints" not in fields or "frame_rate_hz" not in fields:
        raise IngestionError(f"sidecar {meta} must define joints and frame_rate_hz")
    return MotionSchema(joint_names=tuple(fields["joints"].split(",")),
                        frame_rate_hz=float(fields["frame_rate_hz"]))


def resample_frames(frames: np.ndarray, target_frames: int) -> np.ndarray:
    """Linear resample along time; endpoints are preserved exactly."""
    t_src = frames.shape[0]
    if t_src == target_frames:
        return frames.copy()
    positions = np.linspace(0.0, t_src - 1, num=target_frames)
    src = np.arange(t_src, dtype=np.float64)
    out = np.empty((target_frames, frames.shape[1]))
    for d in range(frames.shape[1]):
        out[:, d] = np.interp(positions, src, frames[:, d])
    out[0] = frames[0]
    out[-1] = frames[-1]
    return out


def load_motion_file(path, target_frames: int | None = None) -> Dataset:
    """Parse a motion file, optionally resampling every sample to a fixed T.

    Malformed content raises IngestionError naming the offending row,
    sample, and column.
    """
    path = Path(path)
    if not path.exists():
        raise IngestionError(f"motion file not found: {path}")
    schema = _read_sidecar(path)
    expected_cols = ["id", "stroke_type", "label", "frame"] + _coord_columns(schema.n_joints)

    with path.open(newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise IngestionError(f"{path}: empty file") from None
        if header != expected_cols:
            missing = [c for c in expected_cols if c not in header]
            if missing:
                raise IngestionError(f"{path}: missing columns {missing}")
            raise IngestionError(
                f"{path}: header {header[:6]}... does not match the motion schema "
                f"for {schema.n_joints} joints")

        groups: list[tuple[str, str, str, list]] = []
        current_id = None
        seen_ids = set()
        for row_no, row in enumerate(reader, start=2):
            if len(row) != len(expected_cols):
                raise IngestionError(
                    f"{path}:{row_no}: expected {len(expected_cols)} fields, got {len(row)}")
            sid, stroke_type, label, frame = row[0], row[1], row[2], row[3]
            if sid != current_id:
                if sid in seen_ids:
                    raise IngestionError(
                        f"{path}:{row_no}: frames for sample {sid!r} are not contiguous")
                seen_ids.add(sid)
                current_id = sid
                groups.append((sid, stroke_type, label, []))
            rows = groups[-1][3]
            if int(frame) != len(rows):
                raise IngestionError(
                    f"{path}:{row_no}: sample {sid!r} frame index {frame} out of order "
                    f"(expected {len(rows)})")
            coords = []
            for col_idx, raw in enumerate(row[4:]):
                try:
                    value = float(raw)
                except ValueError:
                    raise IngestionError(
                        f"{path}:{row_no}: sample {sid!r} column "
                        f"{expected_cols[4 + col_idx]!r}: not a number: {raw!r}") from None
                if not np.isfinite(value):
                    raise IngestionError(
                        f"{path}:{row_no}: sample {sid!r} column "
                        f"{expected_cols[4 + col_idx]!r}: non-finite value")
                coords.append(value)
            rows.append(coords)

    samples = []
    for sid, stroke_type, label, rows in groups:
        frames = np.asarray(rows, dtype=np.float64)
        if target_frames is not None:
            frames = resample_frames(frames, target_frames)
        samples.append(MotionSample(
            sample_id=sid, stroke_type=stroke_type, frames=frames,
            label=None if label == "" else int(label)))
    if not samples:
        raise IngestionError(f"{path}: no samples found")
    return Dataset(samples, schema)
