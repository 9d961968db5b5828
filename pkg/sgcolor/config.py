"""
sgcolor Configuration Management
Pydantic Settings를 사용한 환경 변수 관리
"""
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    애플리케이션 설정
    .env 파일이나 환경 변수에서 자동으로 로드됩니다.
    시드는 여기서 읽지 않습니다 (CLI --seed 로만 지정).
    """

    # Project
    PROJECT_NAME: str = "sgcolor"
    VERSION: str = "1.0.0"
    DESCRIPTION: str = "Signed graph balanced coloring toolkit"

    # Logging
    LOG_LEVEL: str = "INFO"

    # Detection
    LONGEST_PATH_CAP: int = 64

    # Generators
    SAMPLER_MAX_ATTEMPTS: int = 200
    SAMPLER_NEG_PROB: float = 0.3
    ENVELOPE_MAX_N: int = 7
    LAZY_MAX_ITERS: int = 10000
    LAZY_ENVELOPE_COPIES: int = 7

    # Experiments
    PROP33_TIME_BUDGET_S: float = 1800.0
    WORKERS: int = 1  # 1보다 크면 프로세스 풀로 인스턴스 분산
    REPORT_DIR: str = "reports"

    # Pydantic  설정
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore"  # 추가 필드 무시
    )


# 전역 설정 인스턴스
settings = Settings()


def get_settings() -> Settings:
    """
    설정 getter
    """
    return settings
