import java.util.*;

public class t09_unsupported {
    static Scanner scanner = new Scanner(System.in);


    public static void main(String[] args) {
        // TODO(transpile) int *heap = malloc(sizeof(int) * 4);
        System.out.println("%p", heap); // TODO(transpile) unsupported printf format
        // TODO(transpile) free(heap);
        // TODO(transpile) goto end;
    end:
        return;
    }

}
