"""Verification CLI: named checks, reports, cache and pinned oracle values."""
