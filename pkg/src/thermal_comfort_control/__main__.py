"""Allow running as python -m thermal_comfort_control."""

from .main import main

if __name__ == "__main__":
    main()
