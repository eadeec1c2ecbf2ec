"""Configuration for the theorem suite and the command line."""

import json
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Union

from .core.errors import ConfigError

OUTPUT_FORMATS = ("text", "json", "dot")


@dataclass
class LabConfig:
    """Horizons and limits used by run_suite."""

    horizon: int = 64  # factor sets
    enumeration_max_len: int = 6
    max_degree: int = 4
    classify_up_to: int = 10
    converse_up_to: int = 5
    saturation_up_to: int = 8
    identities_up_to: int = 8
    scan_len: int = 2000
    return_word_lengths: int = 2
    parallel: bool = False
    only: List[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        for name in (
            "horizon",
            "enumeration_max_len",
            "max_degree",
            "classify_up_to",
            "converse_up_to",
            "saturation_up_to",
            "identities_up_to",
            "scan_len",
            "return_word_lengths",
        ):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}", name)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "LabConfig":
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(f"unknown configuration keys {unknown}", unknown[0])
        return cls(**dict(data))

    @classmethod
    def from_json_file(cls, path: Union[str, Path]) -> "LabConfig":
        try:
            data = json.loads(Path(path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read configuration {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"configuration {path} must hold a JSON object")
        return cls.from_dict(data)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass
class CliConfig:
    """Resolved command-line request."""

    subcommand: str
    output_format: str = "text"
    horizon: Optional[int] = None
    morphism_path: Optional[str] = None
    factors_path: Optional[str] = None
    builtin: Optional[str] = None
    code_text: Optional[str] = None
    code_path: Optional[str] = None
    code_index: int = 0

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"format must be one of {', '.join(OUTPUT_FORMATS)}, got {self.output_format!r}",
                "format",
            )
        if self.horizon is not None and self.horizon < 1:
            raise ConfigError(f"horizon must be positive, got {self.horizon}", "horizon")
        if self.code_index < 0:
            raise ConfigError(f"index must be non-negative, got {self.code_index}", "index")

    @property
    def inputs(self) -> List[str]:
        """Which of --set, --morphism, --factors were given."""
        given = (
            ("set", self.builtin),
            ("morphism", self.morphism_path),
            ("factors", self.factors_path),
        )
        return [flag for flag, value in given if value]
