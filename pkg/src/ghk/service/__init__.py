"""HTTP service package."""
