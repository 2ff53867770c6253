"""
Tests for the scripted demonstrations at reduced sizes.
"""
import pytest
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from config.settings import DemoSettings, get_settings
from src.verify import demos
from src.verify.demos import DEMOS, DemoConfig, run_demo
from src.verify.report import Verdict


@pytest.fixture
def config():
    """Sizes small enough for the default test run."""
    sizes = DemoSettings(
        maltsev_max_size=2,
        maltsev_group_size=3,
        quasigroup_max_size=2,
        abelian_raw_max_size=2,
        abelian_latin_size=3,
        group_raw_max_size=2,
        group_latin_size=3,
        order_max_size=3,
        endpoints_max_size=2,
        theorem1_max_size=2,
        shadow_max_size=2,
    )
    return DemoConfig(sizes)


class TestExtensionDemos:
    """Demos about θ* over groupoid tables."""

    def test_maltsev_separates_constant_table(self, config):
        report = run_demo("maltsev", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["group_tables"] == 1 + 2 + 3
        assert report.details["tables_checked"] == 1 + 16
        assert report.details["separated"] == 14
        exhibit = report.details["exhibit"]
        assert exhibit["table"] == [[0, 0], [0, 0]]
        assert exhibit["failing"] == ["left-cancellation", "right-cancellation"]
        assert not exhibit["cancellative"]

    def test_quasigroup(self, config):
        report = run_demo("quasigroup", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["tables_by_size"] == {"1": 1, "2": 16}
        assert report.details["cancellative_by_size"] == {"1": 1, "2": 2}
        assert report.details["finder_cancellative"] == 2

    def test_abelian(self, config):
        report = run_demo("abelian", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["tables_by_size"] == {"1": 1, "2": 16, "3": 12}

    def test_group_extension(self, config):
        report = run_demo("group-extension", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["models_by_size"] == {"1": 1, "2": 32, "3": 36}

    @pytest.mark.slow
    def test_quasigroup_at_default_size(self):
        report = run_demo("quasigroup")

        assert report.verdict is Verdict.VERIFIED
        assert report.details["finder_cancellative"] == 12


class TestSubmodelDemos:
    """Demos about θ over orders and binary relations."""

    def test_wellfounded(self, config):
        report = run_demo("wellfounded", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["orders_by_size"] == {"1": 1, "2": 3, "3": 19}

    def test_density(self, config):
        report = run_demo("density", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["orders_by_size"] == {"1": 1, "2": 2, "3": 6}

    def test_endpoints(self, config):
        report = run_demo("endpoints", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details == {"models_checked": 2 + 16, "fragment_cutoff": 3}

    def test_theorem1(self, config):
        report = run_demo("theorem1", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["source-itself"] == {"disagreements": 0, "replay_bound": 1}
        assert report.details["covering-pair-itself"] == {"disagreements": 0, "replay_bound": 2}
        # only the one-point loop separates the pair, and it satisfies φ itself
        assert report.details["large-or-serial"] == {"disagreements": 1, "replay_bound": 2}

    @pytest.mark.slow
    def test_theorem1_at_size_four(self):
        report = run_demo("theorem1", DemoConfig(DemoSettings(theorem1_max_size=4)))

        assert report.verdict is Verdict.VERIFIED
        assert report.details["large-or-serial"]["disagreements"] == 1

    @pytest.mark.slow
    def test_theorem1_refutes_serial_against_three_cycle(self, monkeypatch):
        """θ(serial) means "has a cycle"; a 3-cycle sentence misses the longer cycles."""
        monkeypatch.setattr(demos, "CRITERION_PAIRS", (
            ("serial-vs-three-cycle",
             "(forall (x) (exists (y) (R x y)))",
             "(exists (x y z) (and (R x y) (R y z) (R z x)))",
             2),
        ))

        report = run_demo("theorem1", DemoConfig(DemoSettings(theorem1_max_size=4)))

        assert report.verdict is Verdict.REFUTED
        assert report.counterexample.model.startswith("universe 4")
        assert "fragment holds" in report.counterexample.witness

    def test_shadow(self, config):
        report = run_demo("shadow", config)

        assert report.verdict is Verdict.VERIFIED
        assert report.details["models_checked"] == 5 * (2 + 16)

    @pytest.mark.slow
    def test_wellfounded_at_default_size(self):
        report = run_demo("wellfounded")

        assert report.verdict is Verdict.VERIFIED
        assert report.details["orders_by_size"]["4"] == 219


class TestRunDemo:
    """Tests for the registry."""

    def test_all(self, config):
        report = run_demo("all", config)

        assert report.claim_id == "demo:all"
        assert report.verdict is Verdict.VERIFIED
        assert sorted(report.details) == sorted(f"demo:{name}" for name in DEMOS)
        assert set(report.details.values()) == {"verified"}

    def test_unknown_name(self, config):
        with pytest.raises(KeyError):
            run_demo("nope", config)

    def test_default_sizes_from_settings(self):
        assert DemoConfig().sizes is get_settings().demo
