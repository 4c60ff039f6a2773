"""End-to-end checks of the gext binary: exit codes, determinism, JSON schema."""

import json
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema

GEXT = pathlib.Path(sys.argv[1])
SOURCE = pathlib.Path(sys.argv[2])
SCRIPTS = sorted((SOURCE / "scripts").glob("*.gext"))
SCHEMA = json.loads((SOURCE / "schema" / "result.schema.json").read_text())


def run(*args):
    return subprocess.run([str(GEXT), "run", *map(str, args)], capture_output=True, text=True, timeout=600)


def script_file(text):
    f = tempfile.NamedTemporaryFile("w", suffix=".gext", delete=False)
    f.write(text)
    f.close()
    return f.name


class ExitCodes(unittest.TestCase):
    def test_examples_succeed(self):
        for path in SCRIPTS:
            with self.subTest(path=path.name):
                r = run(path)
                self.assertEqual(r.returncode, 0, r.stderr)
                self.assertEqual(r.stderr, "")

    def test_parse_error(self):
        r = run(script_file("ring R = ZZ/4[x];\n"))
        self.assertEqual(r.returncode, 1)
        self.assertEqual(r.stdout, "")
        self.assertIn("line 1, column 13", r.stderr)

    def test_computation_error_prints_nothing(self):
        r = run(script_file("ring S = kk[x];\nmodule F = free(S);\ncompute dim(F);\nring R = S / (x^2);\n"
                            "module M = free(R);\ncompute resolution(M);\n"))
        self.assertEqual(r.returncode, 2)
        self.assertEqual(r.stdout, "")
        self.assertIn("statement 6", r.stderr)

    def test_prime_flag(self):
        text = script_file("ring S = kk[x,y];\ncompute free(S);\n")
        self.assertEqual(run(text, "--prime", "4").returncode, 1)
        r = run(text, "--prime", "7", "--json")
        self.assertEqual(r.returncode, 0)
        self.assertEqual(json.loads(r.stdout)["results"][0]["module"]["ring"]["characteristic"], 7)


class Output(unittest.TestCase):
    def test_deterministic(self):
        for path in SCRIPTS:
            for flags in ([], ["--json"]):
                with self.subTest(path=path.name, flags=flags):
                    self.assertEqual(run(path, *flags).stdout, run(path, *flags).stdout)

    def test_json_matches_schema(self):
        for path in SCRIPTS:
            with self.subTest(path=path.name):
                jsonschema.validate(json.loads(run(path, "--json").stdout), SCHEMA)

    def test_known_values(self):
        quartic = json.loads(run(SOURCE / "scripts" / "quartic.gext", "--json").stdout)["results"]
        self.assertEqual(quartic[0]["module"]["generators"], [])
        elliptic = run(SOURCE / "scripts" / "elliptic.gext").stdout
        self.assertIn("-- globalExt(1, R1, R1)\nkk^1\n", elliptic)


if __name__ == "__main__":
    unittest.main(argv=sys.argv[:1], verbosity=2)
