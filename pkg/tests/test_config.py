"""Settings, environment overrides and exit-code mapping"""

import os

import pytest

from automata.errors import (
    DetsynthError,
    IncompleteSearchError,
    InvariantBreach,
    ResourceCapError,
    ValidationError,
)
from cli import EXIT_INVARIANT, EXIT_RESOURCE, EXIT_VALIDATION, CommandDispatcher, exit_code_for
from config import EstimationLimits, Settings


class TestSettings:
    """Defaults and DETSYNTH_ overrides"""

    def test_defaults(self):
        settings = Settings.from_env(environ={})
        assert settings.log_level == "INFO"
        assert settings.workers == 1
        assert settings.limits == EstimationLimits()
        assert settings.limits.max_component_length == 32
        assert settings.limits.max_synchronizer_nodes == 200_000

    def test_environment_overrides(self):
        settings = Settings.from_env(
            environ={
                "DETSYNTH_LOG_LEVEL": "DEBUG",
                "DETSYNTH_WORKERS": "3",
                "DETSYNTH_MAX_COMPONENT_LENGTH": "5",
                "DETSYNTH_PLANT": "plant.json",
                "UNRELATED": "x",
            }
        )
        assert settings.log_level == "DEBUG"
        assert settings.workers == 3
        assert settings.limits.max_component_length == 5
        assert settings.limits.max_to_sequences == 100_000
        assert settings.plant == "plant.json"

    def test_dotenv_file(self, tmp_path):
        env_file = tmp_path / ".env"
        env_file.write_text("DETSYNTH_MAX_SYNCHRONIZER_NODES=77\n", encoding="utf-8")
        settings = Settings.from_env(str(env_file))
        os.environ.pop("DETSYNTH_MAX_SYNCHRONIZER_NODES", None)
        assert settings.limits.max_synchronizer_nodes == 77


def reject(args):
    raise ValidationError.single("file", "malformed")


class TestExitCodes:
    """Error-to-exit-code mapping"""

    @pytest.mark.parametrize(
        "error, code",
        [
            (ValidationError.single("x", "bad"), EXIT_VALIDATION),
            (ResourceCapError("max_synchronizer_nodes", 10), EXIT_RESOURCE),
            (IncompleteSearchError("max_cost", 2, 3), EXIT_RESOURCE),
            (InvariantBreach("broken"), EXIT_INVARIANT),
            (DetsynthError("other"), EXIT_INVARIANT),
        ],
    )
    def test_mapping(self, error, code):
        assert exit_code_for(error) == code

    def test_dispatcher(self):
        dispatcher = CommandDispatcher()
        dispatcher.register_command("ok", lambda args: 0)
        dispatcher.register_command("bad", reject)
        assert dispatcher.get_command_list() == ["bad", "ok"]
        assert dispatcher.dispatch("ok", None) == 0
        assert dispatcher.dispatch("bad", None) == EXIT_VALIDATION
        with pytest.raises(ValueError):
            dispatcher.dispatch("missing", None)

    def test_unmapped_errors_propagate(self):
        with pytest.raises(KeyError):
            exit_code_for(KeyError("k"))
