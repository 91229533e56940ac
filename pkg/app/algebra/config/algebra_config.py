from pydantic_settings import BaseSettings, SettingsConfigDict


class AlgebraSettings(BaseSettings):
    KRONECKER_DEGREE_CAP: int = 8
    KRONECKER_POINT_POOL: int = 12
    STURM_MAX_BISECTIONS: int = 4096

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="allow",
    )


algebra_settings = AlgebraSettings()
