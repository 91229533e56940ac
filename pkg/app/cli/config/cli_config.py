from pydantic_settings import BaseSettings, SettingsConfigDict


class CliSettings(BaseSettings):
    DEFAULT_SEED: int = 0
    JSON_INDENT: int = 2
    SELF_TEST_TRIALS: int = 5
    SELF_TEST_ENTRY_BOUND: int = 3

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="allow",
    )


cli_settings = CliSettings()
