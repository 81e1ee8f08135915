using System;

public class t09_unsupported
{

    static void Main(string[] args) {
        // TODO(transpile) int *heap = malloc(sizeof(int) * 4);
        Console.WriteLine("%p", heap); // TODO(transpile) unsupported printf format
        // TODO(transpile) free(heap);
        // TODO(transpile) goto end;
    end:
        return;
    }

}
