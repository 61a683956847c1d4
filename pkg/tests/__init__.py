"""Tests for the event processing system."""

