"""
sgcolor CLI Launcher
프로젝트 루트에서 CLI 를 실행하는 스크립트
"""
import sys

from sgcolor.config import settings
from sgcolor.main import main

if __name__ == "__main__":
    if len(sys.argv) == 1:
        print("=" * 60)
        print(f"🚀 {settings.PROJECT_NAME} {settings.VERSION}")
        print("=" * 60)
        print("📌 Commands: gen, check, color, verify, envelope")
        print(f"📌 Reports: {settings.REPORT_DIR}")
        print(f"📌 Workers: {settings.WORKERS}")
        print("=" * 60)
    sys.exit(main())
