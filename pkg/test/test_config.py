"""
Tests for experiment settings and YAML loading
"""

import tempfile
import unittest
from pathlib import Path

from src.config import EXPERIMENT_METHODS, ExperimentSettings, load_settings
from src.utils.errors import ConfigError


class TestExperimentSettings(unittest.TestCase):
    """Defaults, validation and dictionary round trips"""

    def test_defaults(self):
        settings = ExperimentSettings()
        self.assertEqual(settings.kind, "planted")
        self.assertEqual(settings.n, ExperimentSettings.DEFAULT_N)
        self.assertEqual(settings.methods, ["greedy-heuristic"])
        self.assertEqual(settings.scaling, [])
        self.assertEqual(settings.validate(), (True, None))

    def test_from_dict_rejects_unknown_keys(self):
        with self.assertRaises(ConfigError) as ctx:
            ExperimentSettings.from_dict({"n": 10, "colour": "red"})
        self.assertIn("colour", str(ctx.exception))

    def test_to_dict_round_trip(self):
        settings = ExperimentSettings(n=12, p=0.9, q=0.1, epsilons=[0.1, 0.3], seed=4)
        again = ExperimentSettings.from_dict(settings.to_dict())
        self.assertEqual(again.to_dict(), settings.to_dict())

    def test_planted_validation(self):
        cases = [
            {"n": 7},
            {"p": 0.2, "q": 0.5},
            {"epsilons": []},
            {"epsilons": [1.5]},
            {"methods": ["ward"]},
            {"trials": 0},
            {"jobs": 0},
            {"seed": -1},
            {"cut_mode": "fast"},
            {"kind": "sweep"},
        ]
        for overrides in cases:
            with self.subTest(overrides=overrides):
                is_valid, error = ExperimentSettings(**overrides).validate()
                self.assertFalse(is_valid)
                self.assertIsNotNone(error)

    def test_approximation_validation(self):
        ok = ExperimentSettings(kind="approximation", min_n=3, max_n=6, scaling=["log"])
        self.assertTrue(ok.validate()[0])
        # planted-only fields are not checked for the corpus
        self.assertTrue(ExperimentSettings(kind="approximation", n=7).validate()[0])
        self.assertFalse(ExperimentSettings(kind="approximation", min_n=5, max_n=4).validate()[0])
        self.assertFalse(ExperimentSettings(kind="approximation", edge_probability=0.0).validate()[0])

    def test_every_method_is_accepted(self):
        settings = ExperimentSettings(methods=list(EXPERIMENT_METHODS))
        self.assertTrue(settings.validate()[0])


class TestLoadSettings(unittest.TestCase):
    """YAML files on disk"""

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, text: str) -> Path:
        path = self.dir / "experiment.yaml"
        path.write_text(text, encoding="utf-8")
        return path

    def test_load_planted(self):
        path = self._write(
            "kind: planted\nn: 20\np: 0.9\nq: 0.1\ntrials: 5\n"
            "epsilons: [0.1, 0.2]\nmethods: [greedy-exact, average]\nseed: 3\n"
        )
        settings = load_settings(path)
        self.assertEqual(settings.n, 20)
        self.assertEqual(settings.epsilons, [0.1, 0.2])
        self.assertEqual(settings.methods, ["greedy-exact", "average"])

    def test_empty_file_uses_defaults(self):
        settings = load_settings(self._write(""))
        self.assertEqual(settings.to_dict(), ExperimentSettings().to_dict())

    def test_errors(self):
        with self.assertRaises(ConfigError):
            load_settings(self.dir / "missing.yaml")
        with self.assertRaises(ConfigError):
            load_settings(self._write("n: [1, 2\n"))
        with self.assertRaises(ConfigError):
            load_settings(self._write("- 1\n- 2\n"))
        with self.assertRaises(ConfigError):
            load_settings(self._write("n: 9\n"))
        with self.assertRaises(ConfigError):
            load_settings(self._write("bogus: 1\n"))


if __name__ == "__main__":
    unittest.main()
