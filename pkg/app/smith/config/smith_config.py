from pydantic_settings import BaseSettings, SettingsConfigDict


class SmithSettings(BaseSettings):
    ORACLE_MINOR_CAP: int = 5

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="allow",
    )


smith_settings = SmithSettings()
