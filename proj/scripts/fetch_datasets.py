#!/usr/bin/env python3
# Copyright 2026 The misub Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Downloads UCI Sonar and MFeat and writes them as misub CSV files.

Sonar is fetched from the UCI repository. When UCI is unreachable it falls
back to the copy bundled in the `keel-ds` wheel on PyPI (same 208 samples,
values rounded to 3 decimals); the wheel and the member file are pinned by
SHA-256. Every source is also checked structurally (row/column/class counts).

Output: <out>/sonar.csv (f0..f59,label) and <out>/mfeat.csv (649 features,
label).
"""

import argparse
import collections
import hashlib
import io
import pathlib
import subprocess
import sys
import tempfile
import urllib.request
import zipfile

UCI_SONAR = ("https://archive.ics.uci.edu/ml/machine-learning-databases/"
             "undocumented/connectionist-bench/sonar/sonar.all-data")
KEEL_WHEEL = "keel-ds==0.2.5"
KEEL_WHEEL_SHA256 = (
    "79faf1bd2f3ac2082d16eb9c8c49b2b1a60a5182e94464c5d32c7c642ea9650e")
KEEL_SONAR_MEMBER = "keel_ds/data/balanced/raw/sonar.dat"
KEEL_SONAR_SHA256 = (
    "3db22f5ece13d019e43617217524f1072b1eae5275c69040517b784c52427b0d")

UCI_MFEAT = "https://archive.ics.uci.edu/ml/machine-learning-databases/mfeat/"
MFEAT_PARTS = {  # file suffix -> column count
    "fou": 76, "fac": 216, "kar": 64, "pix": 240, "zer": 47, "mor": 6,
}


def sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def download(url: str, timeout: float = 30.0) -> bytes:
    with urllib.request.urlopen(url, timeout=timeout) as response:
        return response.read()


def parse_sonar(text: str):
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("@"):
            continue
        fields = [f.strip() for f in line.split(",")]
        rows.append(([float(v) for v in fields[:-1]], fields[-1]))
    classes = collections.Counter(label for _, label in rows)
    widths = {len(values) for values, _ in rows}
    if len(rows) != 208 or widths != {60} or classes != {"M": 111, "R": 97}:
        raise ValueError(f"unexpected sonar shape: {len(rows)} rows, widths "
                         f"{sorted(widths)}, classes {dict(classes)}")
    return rows


def sonar_from_keel() -> str:
    with tempfile.TemporaryDirectory() as tmp:
        subprocess.run([sys.executable, "-m", "pip", "download", KEEL_WHEEL,
                        "--no-deps", "--only-binary=:all:", "-d", tmp,
                        "--quiet"], check=True)
        wheels = list(pathlib.Path(tmp).glob("keel_ds-*.whl"))
        if len(wheels) != 1:
            raise RuntimeError("keel-ds wheel not found after download")
        blob = wheels[0].read_bytes()
    if sha256(blob) != KEEL_WHEEL_SHA256:
        raise RuntimeError("keel-ds wheel checksum mismatch")
    member = zipfile.ZipFile(io.BytesIO(blob)).read(KEEL_SONAR_MEMBER)
    if sha256(member) != KEEL_SONAR_SHA256:
        raise RuntimeError("keel-ds sonar.dat checksum mismatch")
    return member.decode("utf-8")


def fetch_sonar(out: pathlib.Path) -> None:
    try:
        raw = download(UCI_SONAR)
        print(f"sonar: UCI download, sha256 {sha256(raw)}")
        rows = parse_sonar(raw.decode("utf-8"))
    except Exception as exc:  # network or shape failure
        print(f"sonar: UCI unavailable ({exc}); using {KEEL_WHEEL}")
        rows = parse_sonar(sonar_from_keel())
    with open(out / "sonar.csv", "w", encoding="utf-8", newline="\n") as f:
        f.write(",".join(f"f{i}" for i in range(60)) + ",label\n")
        for values, label in rows:
            f.write(",".join(repr(v) for v in values) + f",{label}\n")
    print(f"sonar: wrote {out / 'sonar.csv'}")


def fetch_mfeat(out: pathlib.Path) -> None:
    columns = []
    for suffix, width in MFEAT_PARTS.items():
        raw = download(UCI_MFEAT + "mfeat-" + suffix).decode("ascii")
        rows = [line.split() for line in raw.splitlines() if line.strip()]
        if len(rows) != 2000 or {len(r) for r in rows} != {width}:
            raise ValueError(f"unexpected shape for mfeat-{suffix}")
        print(f"mfeat-{suffix}: sha256 {sha256(raw.encode('ascii'))}")
        columns.append((suffix, width, rows))
    with open(out / "mfeat.csv", "w", encoding="utf-8", newline="\n") as f:
        header = [f"{s}{i}" for s, w, _ in columns for i in range(w)]
        f.write(",".join(header) + ",label\n")
        for n in range(2000):
            values = [v for _, _, rows in columns for v in rows[n]]
            # 200 consecutive samples per digit, 0 through 9.
            f.write(",".join(values) + f",{n // 200}\n")
    print(f"mfeat: wrote {out / 'mfeat.csv'}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="data", type=pathlib.Path)
    parser.add_argument("--only", choices=["sonar", "mfeat"])
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    status = 0
    for name, fetch in (("sonar", fetch_sonar), ("mfeat", fetch_mfeat)):
        if args.only and args.only != name:
            continue
        try:
            fetch(args.out)
        except Exception as exc:
            print(f"{name}: failed: {exc}", file=sys.stderr)
            status = 1
    return status


if __name__ == "__main__":
    sys.exit(main())
