"""Configuration module tests."""

# pytest discovers tests automatically - no imports needed
