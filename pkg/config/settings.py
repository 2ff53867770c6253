"""
Configuration settings for Submodel Lab.
"""
from dataclasses import dataclass
import os


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    return int(value) if value else default


@dataclass
class SearchSettings:
    """Model search settings."""
    max_size: int = 4           # default size bound N
    extension_slack: int = 0    # θ* bound k = |A| + slack
    class_count_max_size: int = 3  # witness-scan isomorphism counts
    jobs: int = 1


@dataclass
class SieveSettings:
    """Universal-consequence sieve settings."""
    budget: int = 3             # quantified variables per candidate
    max_literals: int = 2
    max_size: int = 4
    model_limit: int = 0        # 0 = no limit


@dataclass
class DemoSettings:
    """Sizes used by the scripted demos."""
    maltsev_max_size: int = 2
    maltsev_group_size: int = 3
    quasigroup_max_size: int = 3
    abelian_raw_max_size: int = 3
    abelian_latin_size: int = 4
    group_raw_max_size: int = 3
    group_latin_size: int = 4
    order_max_size: int = 4
    endpoints_max_size: int = 3
    theorem1_max_size: int = 4
    shadow_max_size: int = 3


@dataclass
class OutputSettings:
    """Report output settings."""
    json_indent: int = 2
    timing: bool = False


@dataclass
class Settings:
    """Main settings container."""
    search: SearchSettings = None
    sieve: SieveSettings = None
    demo: DemoSettings = None
    output: OutputSettings = None

    def __post_init__(self):
        if self.search is None:
            self.search = SearchSettings(
                max_size=_env_int("SUBMODEL_LAB_MAX_SIZE", SearchSettings.max_size),
                jobs=_env_int("SUBMODEL_LAB_JOBS", SearchSettings.jobs),
            )
        if self.sieve is None:
            self.sieve = SieveSettings()
        if self.demo is None:
            self.demo = DemoSettings()
        if self.output is None:
            self.output = OutputSettings()


# Global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance."""
    return settings
