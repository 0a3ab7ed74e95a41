from schubert_complexity.cli import main

main()
