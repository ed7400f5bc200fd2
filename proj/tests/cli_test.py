#!/usr/bin/env python3
"""End-to-end checks of the betaexp command line.

usage: cli_test.py <betaexp binary> <schema dir>
"""

import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMA_DIR = sys.argv[2]
G = ["--beta", "poly:x^2-x-1"]

failures = []


def run(args, stdin=None):
    p = subprocess.run([BIN] + args, input=stdin, capture_output=True, text=True, timeout=120)
    return p.returncode, p.stdout, p.stderr


def check(name, cond, detail=""):
    if not cond:
        failures.append(f"{name}: {detail}")
        print(f"FAIL {name} {detail}")
    else:
        print(f"ok   {name}")


def expect(name, args, out=None, code=0, stdin=None):
    rc, so, se = run(args, stdin)
    ok = rc == code and (out is None or so.strip() == out)
    check(name, ok, f"exit {rc} (want {code}), stdout {so.strip()[:200]!r}, stderr {se.strip()[:200]!r}")
    return so


schemas = {}
for f in os.listdir(SCHEMA_DIR):
    if f.endswith(".json"):
        with open(os.path.join(SCHEMA_DIR, f)) as fh:
            s = json.load(fh)
        jsonschema.Draft202012Validator.check_schema(s)
        schemas[f[:-5]] = s


def validated(name, args):
    rc, so, se = run(["--format", "json"] + args)
    if rc != 0:
        check(name, False, f"exit {rc}: {se.strip()[:200]}")
        return None
    doc = json.loads(so)
    try:
        jsonschema.validate(doc, schemas[doc["command"]])
        check(name, True)
    except jsonschema.ValidationError as e:
        check(name, False, e.message)
    return doc


# Documented examples.
expect("expand greedy of 1", ["expand"] + G + ["--x", "1", "--mode", "greedy", "-n", "5"], "11000")
expect("expand val:11", ["expand"] + G + ["--x", "val:11", "-n", "5"], "11000")
expect("expand zero", ["expand"] + G + ["--x", "0", "-n", "5"], "00000")
expect("quasi-greedy one", ["expand"] + G + ["--mode", "quasi-greedy-one", "-n", "6"], "101010")
expect("normalize 011", ["normalize"] + G + ["--word", "011"], "100")
expect("equiv-class 100", ["equiv-class"] + G + ["--word", "100"], "{100,011}")
expect("kl-constant", ["kl-constant", "--digits", "10"], "1.787231650")
expect("tm-word", ["tm-word", "-n", "3"], "11010011")
so = expect("unique below G", ["unique", "--beta", "1.5", "--x", "random:7"])
check("unique below G branches", so.startswith("BRANCHES depth="), so.strip())
so = expect("dim-estimate", ["dim-estimate", "--beta", "1.95", "-n", "24"])
est = float(so.split()[0].split("=")[-1]) if so else -1
check("dim-estimate in (0,1)", 0 < est < 1, so.strip())
expect("stats blocks", ["stats", "--blocks", "2", "--word", "0101010101"],
       "block,count,freq\n00,0,0\n01,5,0.5555555556\n10,4,0.4444444444\n11,0,0")

# Gamma at x = 1/(2 beta) branches fully.
doc = validated("gamma json", ["gamma"] + G + ["--x", "expr:1/(2*beta)", "--depth", "9", "--full", "4"])
if doc:
    check("gamma full branching", doc.get("full_branching", {}).get("value") is True, str(doc.get("full_branching")))

# Tree at x = 1/beta.
doc = validated("tree json", ["tree"] + G + ["--x", "val:10", "--depth", "6"])
if doc:
    check("tree leaves start 100000", "100000" in doc["leaves"], str(doc["leaves"]))

# Sampling piped into stats.
rc, sample, _ = run(["sample", "--beta", "1.7", "--seed", "1", "-n", "100000"])
check("sample exit", rc == 0)
rc, so, se = run(["stats", "--normality", "3"], stdin=sample)
dev = float(so.split()[0].split("=")[1]) if rc == 0 else 1
check("sample normality < 0.02", dev < 0.02, so.strip())

# Universal expansion for a random point.
rc, so, se = run(["--format", "json", "universalize", "--beta", "1.9", "--x", "random:42", "-L", "4", "-N", "20000"])
doc = json.loads(so) if rc == 0 else None
check("universalize exit", rc == 0, se.strip()[:200])
if doc:
    jsonschema.validate(doc, schemas["universalize"])
    check("universalize census", doc["census"]["universal"] and doc["census"]["missing_count"] == 0)
    check("universalize embeds 30 words", len({r["target"] for r in doc["report"]}) <= 30 and doc["status"] == "complete",
          doc["status"])
    rc, p4, _ = run(["stats", "--complexity", "4", "--format", "text", "--word", doc["output"]])
    check("complexity of universal word", "p(4)=16" in p4, p4)

# Exit codes.
expect("parse error", ["expand", "--beta", "1.x", "--x", "0"], code=1)
expect("unknown option", ["expand", "--bogus"], code=1)
expect("x out of range", ["expand"] + G + ["--x", "2"], code=2)
expect("base out of range", ["expand", "--beta", "2.5", "--x", "0"], code=2)
expect("budget exhausted", ["universalize"] + G + ["--x", "expr:beta/2", "-L", "4", "-N", "30"], code=4)
expect("node budget", ["tree"] + G + ["--x", "expr:1/(2*beta)", "--depth", "40", "--budget", "100"], code=4)

# Every subcommand's JSON validates.
for name, args in [
    ("expand", ["expand"] + G + ["--x", "expr:1/(2*beta)", "-n", "20"]),
    ("expand qg", ["expand", "--beta", "1.9", "--mode", "quasi-greedy-one", "-n", "20"]),
    ("normalize", ["normalize"] + G + ["--word", "0110110", "--cover"]),
    ("universalize finitary", ["universalize"] + G + ["--x", "random:3", "-L", "3", "--finitary"]),
    ("equiv-class", ["equiv-class"] + G + ["--word", "10011"]),
    ("tree dag", ["tree", "--beta", "1.5", "--x", "1/3", "--depth", "10", "--dag"]),
    ("unique", ["unique", "--beta", "1.5", "--x", "1/3"]),
    ("unique certified", ["unique", "--beta", "poly:10x-19", "--x", "seq:(11010010)", "--horizon", "64"]),
    ("unique seq", ["unique", "--beta", "1.9", "--seq", "(11010010)"]),
    ("kl-constant", ["kl-constant", "--digits", "30"]),
    ("tm-word", ["tm-word", "-n", "5"]),
    ("dim-estimate", ["dim-estimate", "--beta", "1.95", "-n", "16"]),
    ("stats", ["stats", "--word", "0110100110010110" * 8, "--blocks", "3", "--complexity", "5",
               "--normality", "2", "--universal", "3"]),
    ("sample bernoulli", ["sample", "--beta", "1.8", "--seed", "5", "-n", "64"]),
    ("sample branch", ["sample", "--beta", "1.8", "--x", "1/2", "--seed", "5", "-n", "64", "--mode", "branch"]),
]:
    validated("schema " + name, args)
doc = validated("unique certified verdict", ["unique", "--beta", "poly:10x-19", "--x", "seq:(11010010)"])
check("unique certified verdict value", doc is not None and doc["verdict"] == "UNIQUE_CERTIFIED", str(doc and doc["verdict"]))
check("all schemas exercised", len(schemas) == 12, str(sorted(schemas)))

# Replay determinism, including across job counts.
for args in [
    ["sample", "--beta", "1.7", "--seed", "9", "-n", "5000"],
    ["sample", "--beta", "1.7", "--x", "1/2", "--seed", "9", "-n", "500", "--mode", "branch"],
    ["universalize", "--beta", "1.8", "--x", "random:11", "-L", "3"],
    ["expand", "--beta", "1.9", "--x", "random:4", "-n", "200"],
]:
    outs = {run(["--format", "json", "--jobs", str(j)] + args)[1] for j in (1, 1, 4)}
    check("replay " + args[0], len(outs) == 1)

# Config file with the same fields as the flags.
with tempfile.TemporaryDirectory() as d:
    cfg = os.path.join(d, "job.ini")
    with open(cfg, "w") as fh:
        fh.write("beta = poly:x^2-x-1\nx = val:11\n")
    expect("config file", ["--config", cfg, "expand", "-n", "5"], "11000")
    target = os.path.join(d, "out.json")
    expect("output file", ["--format", "json", "-o", target, "tm-word", "-n", "2"], "")
    with open(target) as fh:
        check("output file content", json.load(fh)["word"] == "1101")

# Precision cap from the environment.
env = dict(os.environ, BETAEXP_PRECISION_CAP="70")
p = subprocess.run([BIN, "expand", "--beta", "1.9", "--precision", "256", "--x", "0", "-n", "3"],
                   capture_output=True, text=True, env=env)
check("precision cap", p.returncode == 1 or p.returncode == 2, f"exit {p.returncode} {p.stderr.strip()}")

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
