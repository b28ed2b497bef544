"""Test suite for milnorkit."""
