from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # Subset tables take about 2^certified_limit * 4 bytes
    certified_limit: int = 24
    isomorphism_limit: int = 64
    node_budget: int = 10_000_000
    toughness_limit: int = 20
    partition_limit: int = 12
    search_order_limit: int = 11
    small_cnd_limit: int = 7
    log_level: str = "INFO"

    model_config = {
        "env_prefix": "DETOUR_",
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
    }


settings = Settings()
