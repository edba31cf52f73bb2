#!/usr/bin/env python3
"""Builds the benchmark CSV files under data/ from public PyPI distributions.

The UCI / Kaggle originals are redistributed inside several well-known
Python packages. This script fetches those wheels with `pip download`,
extracts the raw files and rewrites them as plain comma-separated files
with a header row, which is the only input format the toolkit reads.

    python3 tools/prepare_datasets.py [--out data]

Sources:
  adult.csv          responsibly 0.1.2   (UCI Adult, 32561 rows)
  breastw.csv        keel-ds 0.2.5       (UCI breast-cancer-wisconsin, 683 complete rows)
  diabetes.csv       keel-ds 0.2.5       (Pima Indians diabetes, 768 rows)
  ionosphere.csv     orange3 3.39.0      (UCI ionosphere, 351 rows)
  wine.csv           mlxtend 0.24.0      (UCI wine, 178 rows, 3 classes)
  titanic/train.csv  dabl 0.3.2 + explainerdashboard 0.5.8
  titanic/test.csv     (Kaggle split: 891 train passengers, 418 test passengers
                        with their recorded outcome)

acute.csv and weatherAUS.csv are not redistributed by any package reachable
from the package index; drop them into the output directory by hand if you
have them (see README).
"""

import argparse
import csv
import io
import os
import subprocess
import sys
import tempfile
import zipfile

WHEELS = {
    "responsibly": "responsibly==0.1.2",
    "keel": "keel-ds==0.2.5",
    "orange": "orange3==3.39.0",
    "mlxtend": "mlxtend==0.24.0",
    "dabl": "dabl==0.3.2",
    "explainer": "explainerdashboard==0.5.8",
}


def fetch(requirement, dest):
    subprocess.run(
        [sys.executable, "-m", "pip", "download", "--no-deps", "-q", requirement, "-d", dest],
        check=True,
    )
    name = requirement.split("==")[0].replace("-", "_").lower()
    for f in os.listdir(dest):
        if f.lower().startswith(name) and f.endswith(".whl"):
            return zipfile.ZipFile(os.path.join(dest, f))
    raise RuntimeError(f"wheel for {requirement} not found")


def write_csv(path, header, rows):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    print(f"wrote {path} ({len(rows)} rows)")


def adult(z, out):
    text = z.read("responsibly/dataset/adult/adult.data").decode()
    header = ["age", "workclass", "fnlwgt", "education", "education_num",
              "marital_status", "occupation", "relationship", "race", "sex",
              "capital_gain", "capital_loss", "hours_per_week", "native_country",
              "income"]
    rows = [[c.strip() for c in line.split(",")] for line in text.splitlines() if line.strip()]
    write_csv(os.path.join(out, "adult.csv"), header, rows)


def keel(z, out):
    text = z.read("keel_ds/data/balanced/raw/wisconsin.dat").decode()
    header = ["clump_thickness", "cell_size_uniformity", "cell_shape_uniformity",
              "marginal_adhesion", "single_epi_cell_size", "bare_nuclei",
              "bland_chromatin", "normal_nucleoli", "mitoses", "label"]
    names = {"2": "benign", "4": "malignant"}
    rows = []
    for line in text.splitlines():
        cells = [c.strip() for c in line.split(",")]
        cells[-1] = names[cells[-1]]
        rows.append(cells)
    write_csv(os.path.join(out, "breastw.csv"), header, rows)

    text = z.read("keel_ds/data/balanced/raw/pima.dat").decode()
    header = ["preg", "plas", "pres", "skin", "insu", "mass", "pedi", "age", "label"]
    rows = [[c.strip() for c in line.split(",")] for line in text.splitlines() if line.strip()]
    write_csv(os.path.join(out, "diabetes.csv"), header, rows)


def ionosphere(z, out):
    lines = z.read("Orange/tests/datasets/ionosphere.tab").decode().splitlines()
    header = lines[0].split("\t")
    header[-1] = "label"
    rows = [line.split("\t") for line in lines[3:] if line.strip()]
    write_csv(os.path.join(out, "ionosphere.csv"), header, rows)


def wine(z, out):
    text = z.read("mlxtend/data/data/wine.csv").decode()
    header = ["alcohol", "malic_acid", "ash", "alcalinity_of_ash", "magnesium",
              "total_phenols", "flavanoids", "nonflavanoid_phenols",
              "proanthocyanins", "color_intensity", "hue",
              "od280_od315_of_diluted_wines", "proline", "class"]
    rows = [[c.strip() for c in line.split(",")] for line in text.splitlines() if line.strip()]
    for r in rows:
        r[-1] = str(int(r[-1]) + 1)
    write_csv(os.path.join(out, "wine.csv"), header, rows)


def titanic(dabl_zip, explainer_zip, out):
    # The full passenger list carries outcomes for every passenger; the
    # explainerdashboard copy identifies which ones were in the Kaggle
    # training split.
    def key(name, fare):
        name = name.replace('"', "'").strip()
        return name, round(float(fare), 2) if fare not in ("", "?") else None

    train_keys = set()
    for part in ("titanic_train.csv", "titanic_test.csv"):
        text = explainer_zip.read(f"explainerdashboard/datasets/{part}").decode()
        for row in csv.DictReader(io.StringIO(text)):
            train_keys.add(key(row["Name"], row["Fare"]))
    text = dabl_zip.read("dabl/datasets/titanic.csv").decode()
    header = ["sex", "age", "number_of_siblings_spouses",
              "number_of_parents_children", "fare", "class", "embarked",
              "survived"]
    train, test = [], []
    seen = set()
    for row in csv.DictReader(io.StringIO(text)):
        rec = [row["sex"], row["age"], row["sibsp"], row["parch"], row["fare"],
               row["pclass"], row["embarked"], row["survived"]]
        rec = ["" if v == "?" else v for v in rec]
        k = key(row["name"], row["fare"])
        if k in train_keys and k not in seen:
            seen.add(k)
            train.append(rec)
        else:
            test.append(rec)
    write_csv(os.path.join(out, "titanic", "train.csv"), header, train)
    write_csv(os.path.join(out, "titanic", "test.csv"), header, test)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    args = ap.parse_args()
    out = os.path.abspath(args.out)
    with tempfile.TemporaryDirectory() as tmp:
        wheels = {k: fetch(v, os.path.join(tmp, k)) for k, v in WHEELS.items()}
        adult(wheels["responsibly"], out)
        keel(wheels["keel"], out)
        ionosphere(wheels["orange"], out)
        wine(wheels["mlxtend"], out)
        titanic(wheels["dabl"], wheels["explainer"], out)


if __name__ == "__main__":
    main()
