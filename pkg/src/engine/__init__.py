"""Completed transition systems, cover procedure and coverability"""
